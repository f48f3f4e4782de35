#include "qwm/config.hpp"

#include <cstdlib>
#include <string>

namespace qwm {

Caps caps() {
    Caps c = kDefaultCaps;
    if (const char* env = std::getenv("QWM_MAX_QUBITS")) {
        try {
            int v = std::stoi(env);
            if (v > 0) {
                c.statevector_qubits = v;
                c.density_qubits = v;
                c.dense_qubits = v;
            }
        } catch (...) {
            // Unparseable override is ignored; defaults stand.
        }
    }
    return c;
}

}  // namespace qwm
