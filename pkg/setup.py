# -*- coding: utf-8 -*-

import sys
from setuptools import setup, find_packages
from codecs import open
from os import path, system
from re import compile as re_compile

# For convenience.
if sys.argv[-1] == "publish":
    system("python setup.py sdist upload")
    sys.exit()

def read(filename):
    with open(filename, encoding="utf-8") as fp:
        contents = fp.read()
    return contents

# Get the version information.
here = path.abspath(path.dirname(__file__))
vre = re_compile("__version__ = \"(.*?)\"")
version = vre.findall(
    read(path.join(here, "python", "twistedtorus", "__init__.py")))[0]

setup(
    name="twisted-torus",
    version=version,
    description="Alexander polynomials and fiberedness of twisted torus knots",
    long_description=read(path.join(here, "README.md")),
    long_description_content_type="text/markdown",
    license="MIT",
    classifiers=[
        "Intended Audience :: Science/Research",
        "License :: OSI Approved :: MIT License",
        "Operating System :: OS Independent",
        "Programming Language :: Python :: 3",
        "Topic :: Scientific/Engineering :: Mathematics"
    ],
    keywords="knot theory Alexander polynomial twisted torus knots",
    package_dir={"": "python"},
    packages=find_packages("python", exclude=["*.tests"]),
    python_requires=">=3.8",
    install_requires=["numpy"],
    extras_require={
        "test": ["coverage", "hypothesis"]
    },
    include_package_data=True,
    data_files=None,
    entry_points={
        "console_scripts": [
            "ttk = twistedtorus.__main__:main",
        ]
    }
)
