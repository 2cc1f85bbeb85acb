from setuptools import setup

try:
    from Cython.Build import cythonize
except ImportError:  # pure-Python install; potbranch._pure is used
    ext_modules = []
else:
    ext_modules = cythonize(
        ["src/potbranch/_kernels.pyx"],
        compiler_directives={"language_level": "3"},
    )

setup(ext_modules=ext_modules)
