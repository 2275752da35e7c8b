from setuptools import Extension, setup
from Cython.Build import cythonize
import numpy as np

# -ffp-contract=off keeps the compiled kernels bit-compatible with the
# numpy fallback (no FMA contraction of the complex arithmetic).
ext = Extension(
    "pdcsim._kernels",
    ["src/pdcsim/_kernels.pyx"],
    include_dirs=[np.get_include()],
    extra_compile_args=["-O3", "-ffp-contract=off"],
)

setup(
    ext_modules=cythonize(
        [ext],
        compiler_directives={"language_level": 3, "boundscheck": False, "wraparound": False},
    ),
)
