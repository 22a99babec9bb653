#define DOCTEST_CONFIG_IMPLEMENT
#include <doctest.h>

#include "quipu/scalar.hpp"

int main(int argc, char** argv) {
    quipu::set_precision(100);
    doctest::Context ctx;
    ctx.applyCommandLine(argc, argv);
    return ctx.run();
}
