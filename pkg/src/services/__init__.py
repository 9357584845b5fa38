"""Service facades returning Result values to the CLI."""
