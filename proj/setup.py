"""Builds the _inspectgame extension from the same sources CMake compiles.

The CMake tree remains the primary build (CLI, test suites); this path exists
so `pip install .` works without extra build tooling. Requires GMP
(libgmp-dev / gmpxx) on the system.
"""

from glob import glob

from pybind11.setup_helpers import Pybind11Extension, build_ext
from setuptools import setup

ext = Pybind11Extension(
    "inspectgame._inspectgame",
    sorted(glob("src/*.cpp")) + ["bindings/module.cpp"],
    include_dirs=["include", "vendor", "/usr/include"],
    libraries=["gmpxx", "gmp"],
    cxx_std=20,
)

setup(ext_modules=[ext], cmdclass={"build_ext": build_ext})
