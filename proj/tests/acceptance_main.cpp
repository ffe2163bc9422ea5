#include <iostream>

#include "gz/acceptance.hpp"

int main() {
    int failures = gz::run_acceptance_suite(std::cout, "primary");
    return failures == 0 ? 0 : 1;
}
