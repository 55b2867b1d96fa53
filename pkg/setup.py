from setuptools import Extension, setup

try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [Extension("adexp._speed", ["src/adexp/_speed.pyx"])],
        compiler_directives={"language_level": "3"},
    )
except ImportError:
    # Pure-Python fallback still works without the compiled kernels.
    ext_modules = []

setup(ext_modules=ext_modules)
