import os

from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
except ImportError:
    cythonize = None

ext_modules = []
if cythonize is not None and not os.environ.get("CDWTUNNEL_NO_EXT"):
    ext_modules = cythonize(
        [
            Extension(
                "cdwtunnel._fastkernels",
                ["src/cdwtunnel/_fastkernels.pyx"],
                extra_compile_args=["-O3"],
            )
        ],
        language_level=3,
    )

setup(ext_modules=ext_modules)
