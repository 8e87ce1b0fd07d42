package surgery.model;

public class Nhspatient {
    private String firstName;

    public Nhspatient() {
        this.firstName = "unset";
    }

    public String getFirstName() {
        return formatName();
    }

    private String formatName() {
        return firstName;
    }
}
