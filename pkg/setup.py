#!/usr/bin/env python
# -*- coding: utf-8 -*-

from setuptools import setup, find_packages


setup(name='schubert-tc',
    version='0.1.0',
    description="Hilbert functions and multiplicities of tangent cones of Schubert varieties in Grassmannians",
    long_description="""Good multisets of roots, standard monomials and Pluecker ideals,
compared against each other and against exact tangent cone computations.""",
    keywords='schubert variety grassmannian tangent cone hilbert function multiplicity groebner',
    include_package_data=True,
    package_data={'schubert': ['templates/*', 'tests/data/*']},
    zip_safe=False,
    packages=find_packages(),
    python_requires='>=3.8',
    classifiers=[
        'Topic :: Scientific/Engineering :: Mathematics',
        'License :: OSI Approved :: BSD License',
        'Intended Audience :: Science/Research',
        'Development Status :: 3 - Alpha',
        'Programming Language :: Python :: 3',
        'Operating System :: OS Independent',
        'Environment :: Console',
    ],
    install_requires=[
        'jinja2',
        'pygments',
        'sympy>=1.9',  # DomainMatrix.rank
    ],
    tests_require=[
        'pytest',
        'mock',
    ],
    extras_require={
        'test': ['pytest', 'mock'],
        'docs': ['sphinx'],
    },
    entry_points={
        'console_scripts': ['schubert = schubert.cli:main']
    },
)
