import os

from setuptools import setup

ext_modules = []
if os.environ.get("TANGLEKIT_NO_EXT") != "1":
    try:
        from Cython.Build import cythonize
        from setuptools import Extension

        ext_modules = cythonize(
            [
                Extension(
                    "tanglekit._enumcore",
                    ["src/tanglekit/_enumcore.pyx"],
                    extra_compile_args=["-O3"],
                )
            ],
            compiler_directives={"language_level": "3"},
        )
    except ImportError:
        # No Cython available: install with the pure-Python kernel only.
        ext_modules = []

setup(ext_modules=ext_modules)
