from setuptools import find_packages, setup

with open('requirements.txt') as f:
    install_requires = [line.strip() for line in f if line.strip()]

setup(
    name='fapk',
    version='1.0.0',
    description='Frequency assignment with site availability: '
                'Branch&Bound solver, scenario generator and bench harness',
    package_dir={'': 'fapk'},
    packages=find_packages('fapk', exclude=['fapk.tests', 'fapk.tests.*']),
    install_requires=install_requires,
    python_requires='>=3.8',
    entry_points={
        'console_scripts': ['fapk=fapk.cli:main'],
    },
)
