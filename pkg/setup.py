"""Build script: compiles the optional Cython kernel extension.

The package is fully functional without the extension (a pure-Python
fallback is selected at import time), so a failed compile downgrades to
a warning instead of aborting the install.
"""

import warnings

from setuptools import Extension, setup
from setuptools.command.build_ext import build_ext


class OptionalBuildExt(build_ext):
    def run(self):
        try:
            super().run()
        except Exception as exc:  # pragma: no cover - toolchain dependent
            warnings.warn(f"compiled kernels skipped ({exc}); using pure-Python fallback")

    def build_extension(self, ext):
        try:
            super().build_extension(ext)
        except Exception as exc:  # pragma: no cover - toolchain dependent
            warnings.warn(f"compiled kernels skipped ({exc}); using pure-Python fallback")


def _extensions():
    try:
        from Cython.Build import cythonize
    except ImportError:  # pragma: no cover - cython missing at build time
        return []
    ext = Extension(
        "vertval._kernels._ckern",
        ["src/vertval/_kernels/_ckern.pyx"],
    )
    return cythonize([ext], language_level=3)


setup(ext_modules=_extensions(), cmdclass={"build_ext": OptionalBuildExt})
