from setuptools import setup, find_packages

with open("README.rst", "r") as f:
    readme = f.read()

setup(
    name="starturan",
    version="0.0.1",
    description="Turán numbers of star forests in uniform hypergraphs.",
    long_description=readme,
    packages=find_packages(exclude=["tests", "tests.*"]),
    extras_require={"test": ["pytest", "hypothesis>=6.0"]},
    install_requires=[
        "numpy>=1.21.2",
        "scipy>=1.7.1",
        "joblib>=1.2.0",
        "tqdm>=4.64.1",
        "networkx>=2.6",
    ],
    entry_points={"console_scripts": ["starturan=starturan.cli:main"]},
    classifiers=[
        'Programming Language :: Python :: 3',
        'License :: OSI Approved :: MIT License',
        'Operating System :: OS Independent',
    ],
)
