# Verifier package
