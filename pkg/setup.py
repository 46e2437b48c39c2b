from setuptools import setup, find_packages

# Read requirements
with open('requirements.txt') as f:
    requirements = [line.split('#')[0].strip() for line in f if line.strip() and not line.startswith('#')]

# Read long description from README
with open('README.md', encoding='utf-8') as f:
    long_description = f.read()

setup(
    name='cellnet',
    version='0.1.0',
    description='Exact counting and ODE equivalence of identical-edge homogeneous coupled cell networks',
    long_description=long_description,
    long_description_content_type='text/markdown',
    packages=find_packages(exclude=['tests', 'tests.*']),
    install_requires=requirements,
    classifiers=[
        'Development Status :: 3 - Alpha',
        'Intended Audience :: Science/Research',
        'Operating System :: OS Independent',
        'Programming Language :: Python :: 3',
        'Topic :: Scientific/Engineering :: Mathematics',
    ],
    python_requires='>=3.9',
    entry_points={
        'console_scripts': [
            'cellnet=app.cli.main:main',
        ],
    },
)
