# Solvers package initialization
