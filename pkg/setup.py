from setuptools import Extension, setup

try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [
            Extension(
                "bisetkit._ckern",
                ["src/bisetkit/_ckern.pyx"],
                extra_compile_args=["-O3"],
            )
        ],
        language_level=3,
    )
except ImportError:
    # The package falls back to bisetkit._pykern at import time.
    ext_modules = []

setup(ext_modules=ext_modules)
