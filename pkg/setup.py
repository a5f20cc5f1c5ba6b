"""Build script: compiles the bit-set kernel extension when Cython and a C
compiler are available, and falls back to the pure-Python kernel otherwise."""

from setuptools import setup


def extensions():
    try:
        from Cython.Build import cythonize
    except ImportError:
        return []
    try:
        return cythonize(
            ["src/pathcontract/kernels/_ckernel.pyx"],
            language_level=3,
        )
    except Exception:
        return []


setup(ext_modules=extensions())
