"""Test suite for the Doomsday engine."""
