#include "pleth/numbers.hpp"

namespace pleth {

Int factorial(int n) {
    Int r = 1;
    for (int i = 2; i <= n; ++i) r *= i;
    return r;
}

}  // namespace pleth
