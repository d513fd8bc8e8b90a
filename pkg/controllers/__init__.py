# Import controllers for easier access
from controllers import quiver_controller, mutation_class_controller, relations_controller, path_algebra_controller, invariants_controller, tilting_controller, catalog_controller, classify_controller
