"""Build the pybind11 extension directly from the C++ core sources.

The CMake build (see CMakeLists.txt) remains the primary path for the CLI
and the test suites; this setup only compiles the Python extension.
"""

from glob import glob

from pybind11.setup_helpers import Pybind11Extension, build_ext
from setuptools import setup

ext_modules = [
    Pybind11Extension(
        "primordialqg._core",
        sorted(glob("src/*.cpp")) + ["python/bindings.cpp"],
        include_dirs=["include", "/usr/include/eigen3"],
        cxx_std=20,
    ),
]

setup(ext_modules=ext_modules, cmdclass={"build_ext": build_ext})
