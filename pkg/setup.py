import os

from setuptools import Extension, setup

# The compiled kernels are optional: the package falls back to the numpy
# reference implementation when the extension is absent (or when
# MACKEY_PURE=1).  Set MACKEY_SKIP_EXT=1 to skip compilation entirely.
ext_modules = []
if not os.environ.get("MACKEY_SKIP_EXT"):
    try:
        import numpy
        from Cython.Build import cythonize

        ext_modules = cythonize(
            [
                Extension(
                    "mackey.kernels._ckernels",
                    ["src/mackey/kernels/_ckernels.pyx"],
                    include_dirs=[numpy.get_include()],
                    define_macros=[
                        ("NPY_NO_DEPRECATED_API", "NPY_1_7_API_VERSION")
                    ],
                )
            ],
            language_level=3,
        )
    except ImportError:
        pass

setup(ext_modules=ext_modules)
