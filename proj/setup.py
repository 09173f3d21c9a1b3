from glob import glob

from pybind11.setup_helpers import Pybind11Extension, build_ext
from setuptools import setup

core = [s for s in sorted(glob("src/*.cpp")) if not s.endswith("cli_main.cpp")]

setup(
    ext_modules=[
        Pybind11Extension(
            "fricke._fricke",
            core + ["python/bindings.cpp"],
            include_dirs=["include", "vendor"],
            libraries=["gmpxx", "gmp"],
            cxx_std=20,
        )
    ],
    cmdclass={"build_ext": build_ext},
)
