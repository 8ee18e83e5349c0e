"""Design, verification and simulation use cases."""
