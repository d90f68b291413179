#include <pybind11/pybind11.h>
PYBIND11_MODULE(_qcs, m) { m.doc() = "placeholder"; }
