"""
Setup script for the hieroglyphs toolkit.
"""
from setuptools import setup, find_packages

setup(
    name="hieroglyphs",
    version="0.1.0",
    packages=find_packages(exclude=["examples", "examples.*"]),
    package_data={"hieroglyphs": ["fixtures/*.ideal"]},
    install_requires=[
        "numpy>=1.20.0",
        "ply>=3.11",
    ],
    extras_require={
        "test": ["sympy>=1.12"],
    },
    entry_points={
        "console_scripts": [
            "hieroglyphs=hieroglyphs.cli.Commands:main",
        ],
    },
    description="Degrees of varieties from Gröbner degeneration, polarization and tablets of hieroglyphs",
    long_description=open("README.md", encoding="utf-8").read(),
    long_description_content_type="text/markdown",
    classifiers=[
        "Programming Language :: Python :: 3",
        "License :: OSI Approved :: MIT License",
        "Operating System :: OS Independent",
        "Topic :: Scientific/Engineering :: Mathematics",
    ],
    python_requires=">=3.8",
)
