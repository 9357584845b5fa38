"""Entity -> response schema mappers and text rendering."""
