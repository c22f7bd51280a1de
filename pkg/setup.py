from setuptools import setup, find_packages

setup(
    name="zariski_lab",
    version="0.1.0",
    packages=find_packages(exclude=["tests"]),
    package_data={"zariski_lab": ["data/*.json"]},
    install_requires=[
        "sympy>=1.12",  # Exact polynomial rings and DomainMatrix linear algebra
        "pyparsing>=3.0",  # Ideal and polynomial expression grammar
        "pyyaml",
        "pandas",  # Survey tables
        "tqdm",  # For progress bars
        "colorama",  # Coloured status lines
    ],
    extras_require={
        "test": ["hypothesis"],
    },
    entry_points={
        'console_scripts': [
            'zariski_lab=zariski_lab.cli:main',
        ],
    },
    description="Ideals of minors of integrally closed modules over a two-dimensional regular local ring",
    keywords="commutative algebra, integrally closed ideals, Fitting ideals, monomial ideals, Zariski factorization",
    python_requires=">=3.9",
)
