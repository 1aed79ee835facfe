"""Build hook for the optional compiled elimination kernel.

The package is pure Python plus one accelerator module; when Cython or a
C compiler is unavailable the install still succeeds and the library
falls back to the interchangeable pure-Python kernel at import time.
"""

from setuptools import Extension, setup

try:
    from Cython.Build import cythonize

    extensions = cythonize(
        [Extension("hpade._elim", ["src/hpade/_elim.pyx"], optional=True)],
        compiler_directives={"language_level": "3"},
    )
except ImportError:
    extensions = []

setup(ext_modules=extensions)
