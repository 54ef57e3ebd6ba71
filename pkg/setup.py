"""Build script: compiles the optional double-description kernel.

The package is pure Python unless Cython is available at build time;
a missing or failed extension build falls back to the pure kernel
selected at import."""

from setuptools import setup

ext_modules = []
try:
    from Cython.Build import cythonize
    ext_modules = cythonize(
        ["src/nscrush/_ddcore.pyx"],
        compiler_directives={"language_level": "3"},
    )
    for ext in ext_modules:
        ext.optional = True
except ImportError:
    pass

setup(ext_modules=ext_modules)
