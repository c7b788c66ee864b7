#include "dispatch.hpp"

int main(int argc, char** argv) { return cli::cmd_dispatch(argc, argv); }
