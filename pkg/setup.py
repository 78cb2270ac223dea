import setuptools

with open("README.md", encoding="utf-8") as f:
    long_desc = f.read()

setuptools.setup(
    name="relmin",
    version="0.1.0",
    description="Exact Cayley-Dickson, Heisenberg and unitriangular group arithmetic with witness "
                "constructions for relatively minimal subgroups.",
    long_description=long_desc,
    long_description_content_type="text/markdown",
    packages=setuptools.find_packages(
        include=["relmin*"]
    ),
    entry_points={
        'console_scripts': [
            'relmin = relmin.command.runner:main',
        ],
    },
    install_requires=[
        "numpy>=1.24",
        "pandas>=2.0",
        "python-dotenv>=1.0",
        "sympy>=1.12",
    ],
    extras_require={
        "test": ["pytest>=7.4", "hypothesis>=6.80"],
    },
    classifiers=[
        "Programming Language :: Python :: 3",
        "License :: OSI Approved :: MIT License",
        "Operating System :: OS Independent",
    ],
    python_requires=">=3.9",
)
