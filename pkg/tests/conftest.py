# Keeps the tests directory on sys.path so the shared reference
# implementations in oracles.py are importable from every test module.
