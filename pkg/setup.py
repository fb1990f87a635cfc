from os.path import dirname, exists, realpath
from setuptools import setup, find_packages
import sys

author = "Conifold DT developers"
authors = [author]
description = 'motivic Donaldson-Thomas invariants of the conifold quiver'
name = 'conifolddt'
year = "2026"


sys.path.insert(0, realpath(dirname(__file__))+"/"+name)
try:
    from _version import version  # noqa: F821
except BaseException:
    version = "unknown"


setup(
    name=name,
    author=author,
    version=version,
    packages=find_packages(exclude=["tests"]),
    package_dir={name: name},
    include_package_data=True,
    license="MIT",
    description=description,
    long_description=open('README.rst').read() if exists('README.rst') else '',
    install_requires=["numpy>=1.14.0",
                      "sympy>=1.5",  # gcd of polynomials, primes, Moebius
                      ],
    extras_require={"tests": ["pytest"]},
    entry_points={
        "console_scripts": [
            "conifolddt = conifolddt.cli:main",
        ],
    },
    python_requires='>=3.6, <4',
    keywords=["Donaldson-Thomas invariants",
              "quiver with potential",
              "wall crossing",
              "plethystic exponential"],
    classifiers=[
        'Operating System :: OS Independent',
        'Programming Language :: Python :: 3',
        'Topic :: Scientific/Engineering :: Mathematics',
        'Intended Audience :: Science/Research'
    ],
    platforms=['ALL'],
)
