"""Semi-discrete transport duals over finite transform potentials."""
