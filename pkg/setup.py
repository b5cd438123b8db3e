"""Build script: compiles the optional bitset kernel extension.

The package works without the extension (a pure-Python kernel is selected
at import time), so any failure here degrades to the pure build instead of
aborting the install.  Set HYPERCOVER_NO_EXT=1 to skip compilation.
"""

import os

from setuptools import Extension, setup
from setuptools.command.build_ext import build_ext


class optional_build_ext(build_ext):
    """Swallow compiler failures; the pure-Python kernel takes over."""

    def run(self):
        try:
            super().run()
        except Exception as exc:  # missing compiler, broken toolchain
            print(f"warning: skipping compiled kernel ({exc})")

    def build_extension(self, ext):
        try:
            super().build_extension(ext)
        except Exception as exc:
            print(f"warning: could not compile {ext.name} ({exc})")


ext_modules = []
if not os.environ.get("HYPERCOVER_NO_EXT"):
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            [
                Extension(
                    "hypercover._kernel_c",
                    ["src/hypercover/_kernel_c.pyx"],
                    extra_compile_args=["-O2"],
                )
            ],
            compiler_directives={"language_level": "3"},
        )
    except ImportError:
        ext_modules = []

setup(ext_modules=ext_modules, cmdclass={"build_ext": optional_build_ext})
