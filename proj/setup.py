import subprocess
import sys
from pathlib import Path

from setuptools import Extension, setup
from setuptools.command.build_ext import build_ext


class CMakeExtension(Extension):
    def __init__(self, name):
        super().__init__(name, sources=[])


class CMakeBuild(build_ext):
    def build_extension(self, ext):
        out = Path(self.get_ext_fullpath(ext.name)).resolve().parent.parent
        build_dir = Path(self.build_temp).resolve()
        src = Path(__file__).resolve().parent
        subprocess.run(
            [
                "cmake",
                "-S", str(src),
                "-B", str(build_dir),
                "-DCMAKE_BUILD_TYPE=Release",
                "-DMIXNORM_BUILD_TESTS=OFF",
                f"-DPython3_EXECUTABLE={sys.executable}",
            ],
            check=True,
        )
        subprocess.run(
            ["cmake", "--build", str(build_dir), "--target", "_core", "-j"],
            check=True,
        )
        subprocess.run(
            ["cmake", "--install", build_dir, "--prefix", str(out)], check=True
        )


setup(
    ext_modules=[CMakeExtension("mixnorm._core")],
    cmdclass={"build_ext": CMakeBuild},
)
