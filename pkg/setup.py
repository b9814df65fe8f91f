"""Build hook for the optional compiled kernels.

The package works without the extension (the pure-Python kernels are
selected at import time), so a missing Cython or C compiler downgrades
the install instead of failing it.
"""

from setuptools import Extension, setup

ext_modules = []
try:
    from Cython.Build import cythonize
except ImportError:
    pass
else:
    ext_modules = cythonize(
        [Extension("groupcolor._speedups",
                   ["src/groupcolor/_speedups.pyx"],
                   extra_compile_args=["-O3"])],
        language_level=3,
    )

setup(ext_modules=ext_modules)
