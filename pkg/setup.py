import setuptools


with open("README.md", "r") as f:
    long_description = f.read()

setuptools.setup(
    name="two-generator-embeddings",
    description="Explicit embeddings of countable groups into 2-generator groups via universal words",
    author="tg-embeddings contributors",
    version="0.0.1",
    long_description=long_description,
    long_description_content_type="text/markdown",
    license="MIT",
    install_requires=[
        "click>=8.1.7,<9",
        "networkx>=3.2.1,<4",
        "pyparsing>=3.1.2,<4",
        "sympy>=1.12,<2",
    ],
    extras_require={
        "test": ["pytest>=8.2.0,<9"],
    },
    entry_points={
        "console_scripts": ["tg-embed=tg_embeddings.cli.Cli:cli"],
    },
    packages=setuptools.find_packages(
        include=(
            "tg_embeddings",
            "tg_embeddings.*",
        )
    ),
    python_requires=">=3.12",
    package_data={"tg_embeddings": ["py.typed", "goldens/*.dsl", "goldens/*.gap"]},
    include_package_data=True
)
