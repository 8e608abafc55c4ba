"""Setup file for GroupShifts"""
from setuptools import setup, find_packages


def readme():
    """Include README.md content in PyPi build information"""
    with open('README.md') as file:
        return file.read()


setup(
    name='group-shifts',
    version='1.0.0',
    description='One-sided group shifts over finite groups: decomposition, certificates and conjugacy invariants.',
    long_description=readme(),
    long_description_content_type="text/markdown",
    packages=find_packages(exclude=["tests", "tests.*"]),
    install_requires=["fcache==0.4.7",
                      "mmh3==4.1.0",
                      "sympy==1.12",
                      "networkx==3.2.1",
                      "numpy==1.26.4",
                      "pydot==1.4.2"],
    tests_require=['pytest', "mimesis"],
    entry_points={
        "console_scripts": ["groupshift=GroupShifts.cli:main"]
    },
    zip_safe=False,
    include_package_data=True,
    python_requires=">=3.8",
    classifiers=[
        "Development Status :: 4 - Beta",
        "Intended Audience :: Science/Research",
        "License :: OSI Approved :: MIT License",
        "Topic :: Scientific/Engineering :: Mathematics",
        "Programming Language :: Python :: 3.8",
        "Programming Language :: Python :: 3.9",
        "Programming Language :: Python :: 3.10",
        "Programming Language :: Python :: 3.11"
    ]
)
