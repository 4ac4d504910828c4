"""Build the optional Cython scan kernel.

If Cython or a C compiler is missing the package still installs and uses
the pure-Python kernel.
"""

from setuptools import setup

ext_modules = []
try:
    from Cython.Build import cythonize
    from setuptools import Extension

    ext_modules = cythonize(
        [Extension("ybme._kernels._scan", ["src/ybme/_kernels/_scan.pyx"],
                   extra_compile_args=["-O3"])],
        compiler_directives={"language_level": "3"},
    )
except ImportError:
    pass

setup(ext_modules=ext_modules)
