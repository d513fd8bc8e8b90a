# Commands for easier access
from routes import enumeration, relations, cartan, invariants, good_mutation, classify, tables, catalog, export
