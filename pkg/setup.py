"""Build script: compiles the optional kernel extension.

The extension is a speed-up, never a requirement — if Cython or a C
compiler is unavailable (or BFTORUS_NO_EXT=1 is set), the install
proceeds and ``bftorus.kernels`` falls back to the pure-Python twin.
"""

import os
import sys

from setuptools import setup
from setuptools.command.build_ext import build_ext


class optional_build_ext(build_ext):
    """Swallow compiler failures; the package works without the ext."""

    def run(self):
        try:
            super().run()
        except Exception as exc:  # noqa: BLE001 - any build failure is fine
            sys.stderr.write(
                f"warning: skipping compiled kernels ({exc}); "
                "using the pure-Python backend\n"
            )

    def build_extension(self, ext):
        try:
            super().build_extension(ext)
        except Exception as exc:  # noqa: BLE001
            sys.stderr.write(
                f"warning: could not compile {ext.name} ({exc}); "
                "using the pure-Python backend\n"
            )


ext_modules = []
if os.environ.get("BFTORUS_NO_EXT") != "1":
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            ["src/bftorus/_kernels_cy.pyx"], language_level=3
        )
    except ImportError:
        sys.stderr.write(
            "warning: Cython not available; using the pure-Python backend\n"
        )

setup(ext_modules=ext_modules, cmdclass={"build_ext": optional_build_ext})
