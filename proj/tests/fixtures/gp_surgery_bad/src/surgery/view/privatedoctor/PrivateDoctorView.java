package surgery.view.privatedoctor;

import surgery.controller.PrivateDoctorController;

public class PrivateDoctorView {
    private PrivateDoctorController controller;

    public PrivateDoctorView() {
        this.controller = new PrivateDoctorController();
    }

    public void render() {
        display(controller.requestName());
    }

    private void display(String text) {
    }
}
