"""Build script for the optional compiled kernel.

The package works without the extension (a pure-Python kernel is selected
at import time); building it just makes the brute-force searches faster.
"""

from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
except ImportError:
    ext_modules = []
else:
    ext_modules = cythonize(
        [
            Extension(
                "teamnego._kernel_cy",
                ["src/teamnego/_kernel_cy.pyx"],
                optional=True,
            )
        ],
        compiler_directives={
            "language_level": "3",
            "boundscheck": False,
            "wraparound": False,
            "cdivision": True,
        },
    )

setup(ext_modules=ext_modules)
