from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
except ImportError:  # pure-Python install
    ext_modules = []
else:
    ext_modules = cythonize(
        [Extension("monogenic12._kernels", ["src/monogenic12/_kernels.pyx"], optional=True)],
        compiler_directives={"language_level": 3, "boundscheck": False},
    )

setup(ext_modules=ext_modules)
