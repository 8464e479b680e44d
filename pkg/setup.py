from setuptools import Extension, setup

# The compiled blade-mask kernel is an optional speedup; the package falls
# back to src/grstacks/_blademask_py.py when the extension is unavailable.
try:
    from Cython.Build import cythonize

    extensions = cythonize(
        [
            Extension(
                "grstacks._blademask",
                ["src/grstacks/_blademask.pyx"],
                extra_compile_args=["-O2"],
            )
        ],
        compiler_directives={"language_level": "3"},
    )
except ImportError:
    extensions = []

setup(ext_modules=extensions)
