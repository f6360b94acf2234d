#include <iostream>

#include "defext/acceptance.hpp"

int main()
{
    const auto rep = defext::run_acceptance(true);
    std::cout << rep.text();
    return rep.all_pass() ? 0 : 1;
}
