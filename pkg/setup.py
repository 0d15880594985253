from setuptools import setup, find_packages

setup(
    name="ufg-depth",
    version="0.1.0",
    packages=find_packages(where="src"),
    package_dir={"": "src"},
    py_modules=["ufg"],
    install_requires=[
        "pandas>=2.0.0",
        "numpy>=1.26",
        "click>=8.1",
        "pyyaml>=6.0.0",
    ],
    extras_require={
        "dev": [
            "pytest>=7.0.0",
            "hypothesis>=6.90",
        ],
    },
    entry_points={
        "console_scripts": [
            "ufg=ufgdepth.cli:main",
        ],
    },
    description="Union-free generic depth for formal contexts, mixed spatial data and hierarchical codes",
    long_description="Exact rational ufg depth, its quasiconcave hull, generalized Tukey depth and comparison medians, with brute-force oracles.",
    long_description_content_type="text/plain",
    classifiers=[
        "Programming Language :: Python :: 3",
        "Operating System :: OS Independent",
    ],
    python_requires=">=3.9",
)
