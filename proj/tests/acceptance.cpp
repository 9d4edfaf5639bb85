#include <iostream>

#include "moncat/selftest.hpp"

int main() {
    int failed = moncat::run_acceptance(std::cout, false);
    return failed == 0 ? 0 : 1;
}
