#include "tsilab/acceptance.hpp"

#include <iostream>

int main() {
    const std::vector<tsilab::CriterionResult> results =
        tsilab::run_acceptance(&std::cout);
    return tsilab::all_passed(results) ? 0 : 1;
}
