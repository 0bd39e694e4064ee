from setuptools import setup, find_packages

setup(
    name='progle',
    version="0.1.0",
    description="Sparse spectral network embedding",
    package_dir={'': 'python'},
    packages=find_packages(where='python'),
    python_requires='>=3.8',
    install_requires=[
        'numpy>=1.20',
        'scipy>=1.7',
        'scikit-learn>=1.0',
        'networkx>=2.6',
        'threadpoolctl>=2.2',
    ],
    entry_points={
        'console_scripts': ['progle=progle.cli.main:main'],
    },
)
