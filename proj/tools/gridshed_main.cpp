#include <iostream>

int main() {
    std::cout << "gridshed placeholder\n";
    return 0;
}
