# Build the optional accelerator extension.  A plain
#     pip install -e . --no-build-isolation
# compiles src/birat/_kernels_cy.pyx when Cython is available; without it the
# package still installs and falls back to the pure Python kernels.
from setuptools import setup

try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        ["src/birat/_kernels_cy.pyx"],
        compiler_directives={"language_level": "3"},
    )
except ImportError:
    ext_modules = []

setup(ext_modules=ext_modules)
