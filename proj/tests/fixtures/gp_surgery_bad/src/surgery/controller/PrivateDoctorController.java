package surgery.controller;

import surgery.model.PrivateDoctorModel;

public class PrivateDoctorController {
    private PrivateDoctorModel model;

    public PrivateDoctorController() {
        this.model = new PrivateDoctorModel();
    }

    public String requestName() {
        return model.fetchName();
    }
}
