"""Build script: compiles the optional Cython kernel extension.

The package works without the extension (a pure-NumPy fallback is selected
at import time), so any failure here degrades gracefully to a source-only
install.
"""
from setuptools import setup

ext_modules = []
try:
    import numpy
    from Cython.Build import cythonize

    ext_modules = cythonize(
        ["src/magflows/kernels/_fast.pyx"],
        compiler_directives={"language_level": "3"},
    )
    for ext in ext_modules:
        ext.include_dirs.append(numpy.get_include())
        ext.extra_compile_args = ["-O3"]
except Exception as exc:  # noqa: BLE001 - any build-env gap means "no extension"
    print(f"magflows: skipping Cython extension ({exc}); pure-Python kernels will be used")

setup(ext_modules=ext_modules)
