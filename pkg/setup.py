# This is a setup file for the package

from setuptools import find_packages
from setuptools import setup

with open("README.md", "r", encoding="utf-8") as fh:
    long_description = fh.read()

setup(
    name='oooooob',
    version='0.1.0',
    description='Exact solver and rule verifier for the multi-pile versions of OOOOOOB',
    long_description=long_description,
    long_description_content_type="text/markdown",
    keywords='combinatorial game theory, impartial games, nim, P-positions, OOOOOOB',
    packages=find_packages(exclude=["tests", "tests.*"]),
    python_requires=">=3.8",
    classifiers=[
        "Programming Language :: Python :: 3",
        "License :: OSI Approved :: MIT License",
        "Operating System :: OS Independent",
    ],
    package_data={
        '': ['*.yaml', '*.txt']
    },
    include_package_data=True,
    install_requires=[
        'pyyaml',
        'numpy',
        'pandas>=1.5',
    ],
    extras_require={
        'tests': ['pytest', 'hypothesis'],
    },
    entry_points={
        'console_scripts': ['oooooob=oooooob.cli:main'],
    },
)
