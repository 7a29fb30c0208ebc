"""Characters, Howe duality identities and Kostant type homology formulas
for Fock space modules of infinite rank Lie algebras and superalgebras."""

__version__ = "0.1.0"
