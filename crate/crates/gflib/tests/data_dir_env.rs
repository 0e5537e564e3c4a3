use polygf_gflib::*;

// alone in its own binary: it changes the process environment
#[test]
fn env_var_moves_the_data_directory() {
    let dir = tempfile::tempdir().unwrap();
    std::env::set_var(DATA_DIR_ENV, dir.path());
    assert_eq!(data_dir(), dir.path());
    assert!(c2_numerators().is_err());
    assert!(expand("c2_aniso", &polygf_series::Truncation::total(2, 6)).is_err());
    assert!(expand("c2_iso", &polygf_series::Truncation::caps(&[6])).is_ok());
    std::env::remove_var(DATA_DIR_ENV);
    assert!(c2_numerators().is_ok());
}
