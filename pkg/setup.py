"""Build hook for the optional compiled echelon kernel.

The package is pure Python plus one optional Cython extension. If Cython or a
C compiler is missing the build silently degrades to the pure-Python kernel;
veronese_jets.echelon selects whichever is importable at run time.
"""

from setuptools import setup

ext_modules = []
try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        ["src/veronese_jets/_echelon_cy.pyx"],
        compiler_directives={"language_level": "3"},
    )
except Exception:
    ext_modules = []

setup(ext_modules=ext_modules)
