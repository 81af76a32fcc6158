"""Build script: compiles the optional kernel extension.

The package is fully functional without it (a pure-Python fallback is
selected at import time), so any failure to cythonize or compile only
downgrades performance.  Set COSETQEC_NO_EXT=1 to skip the extension
build entirely.
"""

import os

from setuptools import setup
from setuptools.command.build_ext import build_ext


class OptionalBuildExt(build_ext):
    def run(self):
        try:
            super().run()
        except Exception as exc:  # noqa: BLE001 - degrade, don't fail the install
            print(f"warning: kernel extension build failed ({exc}); "
                  "falling back to pure Python")

    def build_extension(self, ext):
        try:
            super().build_extension(ext)
        except Exception as exc:  # noqa: BLE001
            print(f"warning: building {ext.name} failed ({exc}); "
                  "falling back to pure Python")


ext_modules = []
if os.environ.get("COSETQEC_NO_EXT") != "1":
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            ["src/cosetqec/_kernels/_speedups.pyx"],
            compiler_directives={"language_level": "3"},
        )
    except ImportError:
        print("warning: Cython unavailable; building without the kernel extension")

setup(ext_modules=ext_modules, cmdclass={"build_ext": OptionalBuildExt})
