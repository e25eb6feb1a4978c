from setuptools import setup, find_packages

with open("README.md", "r", encoding="utf-8") as fh:
    long_description = fh.read()

with open("requirements.txt", "r", encoding="utf-8") as fh:
    requirements = [line.strip() for line in fh if line.strip() and not line.startswith("#")]

setup(
    name="tangle-shadow-bracket",
    version="1.0.0",
    author="Tangle Shadow Bracket contributors",
    description="Exact bracket polynomials of 2-tangle shadows, their closures and coefficient tables",
    long_description=long_description,
    long_description_content_type="text/markdown",
    packages=find_packages(exclude=["tests", "tests.*"]),
    package_data={"tangle_shadow": ["data/oeis/*.txt"]},
    install_requires=requirements,
    extras_require={
        "test": [
            "hypothesis>=6.0",
            "sympy>=1.9",
        ],
    },
    entry_points={
        "console_scripts": [
            "tangle-shadow=tangle_shadow.cli:main",
        ],
    },
    classifiers=[
        "Programming Language :: Python :: 3",
        "License :: OSI Approved :: MIT License",
        "Operating System :: OS Independent",
        "Topic :: Scientific/Engineering :: Mathematics",
    ],
    python_requires='>=3.8',
)
