// placeholder until the bindings land
#include <pybind11/pybind11.h>
PYBIND11_MODULE(_celldraw, m) { m.doc() = "cell structure toolkit"; }
