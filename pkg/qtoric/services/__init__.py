"""Services implementing the Hopf-algebra and quasitoric computations."""
