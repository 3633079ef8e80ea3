from pybind11.setup_helpers import Pybind11Extension, build_ext
from setuptools import setup

ext = Pybind11Extension(
    "pcpl._pcpl",
    [
        "bindings/module.cpp",
        "src/bitio.cpp",
        "src/codes.cpp",
        "src/distributions.cpp",
        "src/analysis.cpp",
        "src/rational.cpp",
    ],
    include_dirs=["include", "vendor"],
    cxx_std=20,
)

setup(ext_modules=[ext], cmdclass={"build_ext": build_ext})
