import glob

from pybind11.setup_helpers import Pybind11Extension, build_ext
from setuptools import setup

# the extension compiles the whole core; the CMake build stays the canonical
# way to get the CLI and the test binaries
ext = Pybind11Extension(
    "catkit._catkit",
    sorted(glob.glob("src/*.cpp")) + ["bindings/pymodule.cpp"],
    include_dirs=["include", "vendor"],
    cxx_std=20,
)

setup(ext_modules=[ext], cmdclass={"build_ext": build_ext})
