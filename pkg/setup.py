import os

from setuptools import Extension, setup

extensions = []
if not os.environ.get("PQHB_SKIP_EXT"):
    from Cython.Build import cythonize

    extensions = cythonize(
        [Extension("pqhb._core", ["src/pqhb/_core.pyx"])],
        compiler_directives={"language_level": "3"},
    )

setup(ext_modules=extensions)
