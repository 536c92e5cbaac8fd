import warnings

from setuptools import setup
from setuptools.command.build_ext import build_ext


class OptionalBuildExt(build_ext):
    """Build the Numerov kernel if possible; fall back to pure Python."""

    def run(self):
        try:
            super().run()
        except Exception as exc:  # compiler/toolchain missing
            warnings.warn("skipping compiled kernel (%s); using pure-Python fallback" % exc)

    def build_extension(self, ext):
        try:
            super().build_extension(ext)
        except Exception as exc:
            warnings.warn("failed to build %s (%s); using pure-Python fallback" % (ext.name, exc))


ext_modules = []
try:
    from Cython.Build import cythonize
    from setuptools import Extension

    ext_modules = cythonize(
        [
            Extension(
                "rrspectra._kernels.numerov_cy",
                ["src/rrspectra/_kernels/numerov_cy.pyx"],
                extra_compile_args=["-O3"],
            )
        ],
        compiler_directives={"language_level": "3"},
    )
except ImportError:
    warnings.warn("Cython unavailable; the pure-Python Numerov kernel will be used")

setup(ext_modules=ext_modules, cmdclass={"build_ext": OptionalBuildExt})
