import os

from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
except ImportError:
    cythonize = None

# The compiled core is optional: the package falls back to the pure-Python
# kernels in dmpsat._pycore when the extension is absent (or when the
# DMPSAT_PURE environment variable is set at runtime).
ext_modules = []
if cythonize is not None and not os.environ.get("DMPSAT_NO_EXT"):
    ext_modules = cythonize(
        [
            Extension(
                "dmpsat._core",
                ["src/dmpsat/_core.pyx"],
                extra_compile_args=["-O3"],
            )
        ],
        compiler_directives={"language_level": "3"},
    )

setup(ext_modules=ext_modules)
