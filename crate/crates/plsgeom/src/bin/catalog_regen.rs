fn main() {
    plsgeom::catalog::derive::regen_all();
}
