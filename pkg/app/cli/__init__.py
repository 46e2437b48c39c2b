"""
Command-line interface. The entry point is app.cli.main:main.
"""
